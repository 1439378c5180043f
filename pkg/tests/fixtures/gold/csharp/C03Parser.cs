using System;

public class Parser
{
    /// <summary>
    /// Разбирает целое число из строки.
    /// </summary>
    /// <param name="text">исходная строка</param>
    /// <returns>число</returns>
    /// <exception cref="FormatException">если строка некорректна</exception>
    public int Parse(string text)
    {
        if (text.Length == 0) throw new FormatException("пусто");
        return int.Parse(text);
    }
}
