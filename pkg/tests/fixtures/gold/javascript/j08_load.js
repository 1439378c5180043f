/**
 * Загружает данные пользователя.
 * @param {string} id идентификатор
 * @returns {Promise<Object>} данные
 */
export async function loadUser(id) {
  const res = await fetch("/api/users/" + id);
  return res.json();
}
