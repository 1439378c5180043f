public class Service implements Runnable {
    /**
     * Запускает фоновую задачу.
     */
    @Override
    public void run() {
        System.out.println("run");
    }
}
