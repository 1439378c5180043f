_CACHE = {}


def reset_cache():
    """Очищает внутренний кэш модуля."""
    _CACHE.clear()
