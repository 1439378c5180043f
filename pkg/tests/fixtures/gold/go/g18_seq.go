package seq

// First возвращает первый элемент.
func First(xs []int) int {
	// комментарий внутри тела
	return xs[0]
}
// Last возвращает последний элемент.
func Last(xs []int) int {
	return xs[len(xs)-1]
}
