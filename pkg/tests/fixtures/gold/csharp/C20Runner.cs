using System;

public class Runner
{
    /// <summary>Возвращает действие.</summary>
    /// <returns></returns>
    public Action Make()
    {
        return () => { throw new InvalidOperationException(); };
    }
}
