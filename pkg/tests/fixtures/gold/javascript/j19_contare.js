/**
 * Restituisce il numero di elementi nella lista.
 * @param {Array} lista la lista
 * @returns {number} il numero di elementi
 */
const contare = function (lista) {
  return lista.length;
};
