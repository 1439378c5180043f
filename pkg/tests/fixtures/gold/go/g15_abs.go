package calc

// Abs retourne la valeur absolue du nombre.
func Abs(x int) int {
	if x < 0 {
		return -x
	}
	return x
}
