package geo

// Origin возвращает точку начала координат.
func Origin() struct{ X, Y int } {
	return struct{ X, Y int }{0, 0}
}
