public class Temp
{
    /// <summary>Converts Celsius to Fahrenheit.</summary>
    /// <param name="c">temperature in Celsius</param>
    /// <returns>temperature in Fahrenheit</returns>
    public double ToF(double c)
    {
        return c * 9 / 5 + 32;
    }
}
