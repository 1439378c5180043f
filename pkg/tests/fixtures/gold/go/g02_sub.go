package calc

// возвращает разность
func Sub(a, b int) int {
	return a - b
}
