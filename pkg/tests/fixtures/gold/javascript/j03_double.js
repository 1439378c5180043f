/**
 * Удваивает число.
 * @param {number} x число
 * @returns {number} удвоенное значение
 */
const double = (x) => x * 2;
