namespace Demo
{
    public static class MathUtil
    {
        /// <summary>
        /// Возвращает сумму двух чисел.
        /// </summary>
        /// <param name="a">первое слагаемое</param>
        /// <param name="b">второе слагаемое</param>
        /// <returns>сумма</returns>
        public static int Add(int a, int b)
        {
            return a + b;
        }
    }
}
