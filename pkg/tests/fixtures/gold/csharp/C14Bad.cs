public class Bad
{
    /// <summary>Сбрасывает состояние.</summary>
    /// <param>флаг сброса</param>
    public void Reset(bool hard)
    {
    }
}
