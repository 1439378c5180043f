package logx

// Printf печатает сообщение в журнал.
func Printf(format string, args ...interface{}) {
	_ = format
	_ = args
}
