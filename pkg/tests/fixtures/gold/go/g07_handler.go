package web

import "fmt"

// Handler создаёт обработчик запросов.
func Handler(prefix string) func(string) string {
	tmpl := `{{.Name}} }`
	return func(name string) string {
		return fmt.Sprintf(prefix+tmpl, name)
	}
}
