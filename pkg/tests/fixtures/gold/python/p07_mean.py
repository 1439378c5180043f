def mean(xs: list) -> float:
    """Compute the arithmetic mean of the values.

    Args:
        xs: input values

    Returns:
        the mean value
    """
    return sum(xs) / len(xs)
