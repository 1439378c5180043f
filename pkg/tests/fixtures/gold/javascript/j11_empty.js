/**
 * Checks whether the value is empty.
 * @param {*} value the value to check
 * @returns {boolean} true when empty
 */
function isEmpty(value) {
  return value == null || value.length === 0;
}
