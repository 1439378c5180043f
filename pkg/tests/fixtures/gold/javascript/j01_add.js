/**
 * Возвращает сумму двух чисел.
 * @param {number} a - первое слагаемое
 * @param {number} b - второе слагаемое
 * @returns {number} сумма
 */
function add(a, b) {
  return a + b;
}
