def make_adder(n):
    def adder(x):
        """Прибавляет n к аргументу.

        Args:
            x (int): число

        Returns:
            int: результат
        """
        return x + n
    return adder
