package util

// Max возвращает большее из чисел.

func Max(a, b int) int {
	if a > b {
		return a
	}
	return b
}
