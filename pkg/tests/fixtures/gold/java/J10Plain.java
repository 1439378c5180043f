public class Plain {
    /* Обычный комментарий, не javadoc. */
    public int one() {
        return 1;
    }
}
