import functools


class Repo:
    @staticmethod
    def normalize(key: str) -> str:
        """Приводит ключ к нижнему регистру.

        Args:
            key: ключ

        Returns:
            нормализованный ключ
        """
        return key.lower()

    @classmethod
    def create(cls, url: str) -> "Repo":
        """Создаёт репозиторий по адресу.

        Args:
            url: адрес репозитория

        Returns:
            новый объект
        """
        return cls()


@functools.lru_cache(maxsize=None)
async def fetch(url: str) -> bytes:
    """Загружает данные по адресу."""
    return b""
