public class Notes {
    /**
     * Устаревший метод.
     * @param x значение
     */
    // TODO удалить
    public void old(int x) {
    }
}
