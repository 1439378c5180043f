public class Html {
    /**
     * Форматирует <b>дату</b> в строку.
     * <p>
     * Использует {@link java.time.format.DateTimeFormatter}.
     * @param date дата
     * @return строка с датой
     */
    public String format(java.time.LocalDate date) {
        return date.toString();
    }
}
