public class Geometry
{
    /// <summary>Вычисляет площадь круга.</summary>
    /// <param name="r">радиус</param>
    /// <returns>площадь</returns>
    public static double Area(double r) => System.Math.PI * r * r;
}
