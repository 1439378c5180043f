/**
 * Удаляет фигурные скобки из строки.
 * @param {string} s строка
 * @returns {string} строка без скобок
 */
function stripBraces(s) {
  return s.replace(/[{}]/g, "");
}
