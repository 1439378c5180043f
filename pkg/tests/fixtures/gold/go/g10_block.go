package calc

/* Mul умножает два числа. */
func Mul(a, b int) int {
	return a * b
}
