/**
 * Печатает элементы массива.
 * @param {Array} arr массив
 */
function printAll(arr) {
  arr.forEach(function (x) {
    return console.log(x);
  });
}
