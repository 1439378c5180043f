using System;

public class Guard
{
    /// <summary>Проверяет аргумент на null.</summary>
    /// <param name="value">проверяемое значение</param>
    public void NotNull(object value)
    {
        if (value == null)
            throw new ArgumentNullException(nameof(value));
    }
}
