import java.util.List;
import java.util.Map;

public class Index<K, V> {
    private final Map<K, List<V>> data;

    /**
     * Создаёт пустой индекс.
     * @param data начальные данные
     */
    public Index(Map<K, List<V>> data) {
        this.data = data;
    }

    /**
     * Возвращает значения по ключу.
     * @param key ключ поиска
     * @return список значений
     */
    public List<V> get(K key) {
        return data.get(key);
    }
}
