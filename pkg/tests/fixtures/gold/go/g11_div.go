package calc

// Div делит a на b и возвращает частное и остаток.
func Div(a, b int) (q, r int) {
	q = a / b
	r = a % b
	return
}
