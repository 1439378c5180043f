public class Tasks {
    /**
     * Создаёт задачу печати.
     * @param msg сообщение
     * @return задача
     */
    public Runnable printer(final String msg) {
        return new Runnable() {
            /**
             * Печатает сообщение.
             */
            @Override
            public void run() {
                System.out.println(msg);
            }
        };
    }
}
