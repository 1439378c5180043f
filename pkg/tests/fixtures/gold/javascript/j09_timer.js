function Timer() {
  this.start = Date.now();
}

/**
 * Возвращает прошедшее время в миллисекундах.
 * @returns {number} время
 */
Timer.prototype.elapsed = function () {
  return Date.now() - this.start;
};
