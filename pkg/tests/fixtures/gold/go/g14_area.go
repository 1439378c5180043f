package calc

// Pi приближение числа пи.
const Pi = 3.14

func Area(r float64) float64 {
	return Pi * r * r
}
