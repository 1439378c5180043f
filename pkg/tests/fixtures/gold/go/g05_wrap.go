package util

// Wrap оборачивает значение в интерфейс.
func Wrap(v int) interface{} {
	s := "{не скобка}"
	_ = s
	return v
}
