package main

import "os"

// main запускает программу.
func main() {
	os.Exit(run())
}

// run выполняет основную работу и возвращает код выхода.
func run() int {
	return 0
}
