public class Legacy
{
    // Старый комментарий.
    public void A()
    {
    }

    /** Блочный комментарий. */
    public void B()
    {
    }
}
