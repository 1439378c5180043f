def join_words(words):
    """Склеивает слова через пробел.

    Args:
        words (list): список слов

    Returns:
        строка
    """
    return " ".join(words)
