/**
 * Инициализирует приложение и подписывается на события.
 */
function init() {
  document.addEventListener("click", onClick);
}
