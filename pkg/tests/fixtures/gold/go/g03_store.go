package store

type Store struct {
	items map[string]string
}

// Get возвращает значение по ключу и признак наличия.
func (s *Store) Get(key string) (string, bool) {
	v, ok := s.items[key]
	return v, ok
}

// Set сохраняет значение.
// Существующее значение перезаписывается.
func (s *Store) Set(key, value string) {
	s.items[key] = value
}
