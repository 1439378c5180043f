package state

// Reset
func Reset() {
}
