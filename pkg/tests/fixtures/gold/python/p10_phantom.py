def greet(name: str) -> str:
    """Формирует приветствие.

    Args:
        name: имя пользователя
        title: обращение

    Returns:
        строка приветствия
    """
    return "Привет, " + name
