def noop(flag: bool) -> bool:
    '''Возвращает флаг без изменений.

    Args:
        flag:

    Returns:
        тот же флаг
    '''
    return flag
