""" общие константы библиотеки """

# уровни журналирования
DEFAULT_LOG_LEVEL = 1  # 1 - errors, 2 - verbose, 3 - debug
LOG_FAILURE = 0
LOG_ERROR = 1
LOG_INFO  = 2
LOG_DEBUG = 3
CRITICALITY_STR = [
    "ОТКАЗ", "ОШИБКА", "ИНФО", "ОТЛАДКА"
]

# очереди пула вычислителей переписи
CENSUS_TASKS_QUEUE_NAME = "census.tasks"
CENSUS_RESULTS_QUEUE_NAME = "census.results"
WORKER_POLL_TIMEOUT = 0.5  # секунд

# ограничения на перебор
MAX_ENUMERATION = 2_000_000
MAX_CONJUGACY_STATES = 200_000
MAX_CENSUS_D = 8
MAX_CENSUS_K = 8
UNIQUENESS_MAX_LEN = 5

# имя выделенной вершины графа C'_n и префикс остальных
T_VERTEX = "t"
A_PREFIX = "a"

# режимы нормальных форм при n=5
NF_MODE_SQUARE = "square"
NF_MODE_GENERAL = "general"

# слои множества L(d,k)
STRATUM_ZERO = "L0"
STRATUM_ONE = "L1"
STRATUM_TWO = "L2"

# соглашения о подсчёте слов типа (ii)
CONVENTION_FORMULA = "formula"
CONVENTION_STRICT = "strict"

# источники чисел в строке переписи
SOURCE_ENUMERATED = "ENUMERATED"
SOURCE_FORMULA = "FORMULA"

# режимы оценки плотности
MODE_EXHAUSTIVE = "exhaustive"
MODE_SAMPLE = "sample"
DEFAULT_SAMPLES = 1000

CSV_COLUMNS = [
    "n", "d", "k", "l_H", "l_U", "l_HU", "e", "e_prime", "l1", "l2",
    "l_dk", "z1", "z2", "z3", "z4", "zY", "rho_hat", "mode", "seed"
]

# словарь вердиктов
STATUS_EMBEDS = "EMBEDS"
STATUS_DOES_NOT_EMBED = "DOES_NOT_EMBED"
STATUS_UNKNOWN = "UNKNOWN"
DECIDABLE = "decidable"
UNKNOWN = "unknown"

# обоснования заключений
JUSTIFY_MAIN = "MAIN_THEOREM"
JUSTIFY_AMALGAM = "AMALGAM_THEOREM"
JUSTIFY_CLIQUE = "CLIQUE_COROLLARY"
JUSTIFY_INDEPENDENT = "INDEPENDENT_COROLLARY"
JUSTIFY_CLIQUE_CONVERSE = "CLIQUE_COROLLARY_CONVERSE"
JUSTIFY_RESTRICTED = "RESTRICTED_EMBEDS"
JUSTIFY_CENTRAL = "CENTRAL_REDUCTION"
JUSTIFY_NONE = "HYPOTHESES_FAIL"

# пороги показателя для заключений основной теоремы
MAIN_EMBEDS_MIN_N = 3
MAIN_WORD_PROBLEM_MIN_N = 4
INDEPENDENT_CONJUGACY_MIN_N = 2
