/* Обычный комментарий. */
function plain() {
  return 1;
}
