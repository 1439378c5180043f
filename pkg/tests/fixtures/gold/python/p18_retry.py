def retry(fn, attempts: int = 3):
    """Wiederholt den Aufruf der Funktion mehrmals.

    Args:
        fn (callable): Funktion
        attempts: Anzahl der Versuche

    Returns:
        object: Ergebnis
    """
    last = None
    for _ in range(attempts):
        try:
            return fn()
        except Exception as err:
            last = err
    raise last
