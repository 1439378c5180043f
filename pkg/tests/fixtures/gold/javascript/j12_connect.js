/**
 * Создаёт подключение.
 * @param {Object} options параметры
 * @param {string} options.host хост
 * @param {number} [retries=3] число попыток
 * @returns {Object} подключение
 */
function connect(options, retries = 3) {
  return { host: options.host, retries };
}
