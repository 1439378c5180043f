import java.io.IOException;

public class Reader {
    /**
     * Читает строку из источника.
     *
     * @param path путь к файлу
     * @return прочитанная строка
     * @throws IOException если файл недоступен
     */
    public String read(String path) throws IOException {
        if (path == null) {
            throw new IOException("нет пути");
        }
        return "{" + path + "}";
    }
}
