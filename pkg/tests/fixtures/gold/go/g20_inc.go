package calc

// Inc: увеличивает значение на единицу.
func Inc(x int) int {
	return x + 1
}
