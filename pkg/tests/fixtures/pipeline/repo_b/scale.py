def scale_vector(xs: list, factor: float) -> list:
    """Multiplies every component of a vector by the same factor.

    The input list is left untouched and a new list is returned.

    Args:
        xs (list): components of the vector to scale
        factor (float): multiplier applied to each component

    Returns:
        list: a new list holding the scaled components
    """
    return [x * factor for x in xs]
