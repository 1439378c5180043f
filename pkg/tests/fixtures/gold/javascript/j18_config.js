class Config {
  /**
   * Путь к файлу.
   * @returns {string} путь
   */
  get path() {
    return this._path;
  }

  /**
   * Загружает конфигурацию из файла.
   * @param {string} file путь к файлу
   * @returns {Config} конфигурация
   */
  static load(file) {
    return new Config(file);
  }
}
