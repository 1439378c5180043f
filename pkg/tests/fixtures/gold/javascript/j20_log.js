/**
 * Логирует сообщение.
 * @param {string} msg сообщение
 * @returns ничего не возвращает
 */
function log(msg) {
  console.log(msg);
}
