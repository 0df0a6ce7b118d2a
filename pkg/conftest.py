""" корневой conftest: каталог проекта попадает в sys.path, пакет src импортируется из тестов """
