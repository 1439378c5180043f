public class Joiner {
    /**
     * Склеивает строки через разделитель.
     * @param sep разделитель
     * @param parts части строки
     * @return итоговая строка
     */
    @SuppressWarnings({"unchecked", "rawtypes"})
    public static String join(@Deprecated String sep, String... parts) {
        return String.join(sep, parts);
    }
}
