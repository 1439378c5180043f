def save(data: dict, path: str):
    """Сохраняет словарь в файл.

    Args:
        data: данные
        path: путь

    Returns:
        ничего
    """
    with open(path, "w") as fh:
        fh.write(str(data))
