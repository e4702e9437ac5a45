# 链族 L_i = {n | n <= i} 的最大下标，全集上界为 CHAIN_MAX_INDEX + 2
CHAIN_MAX_INDEX = 24
# 矩形族的网格半径，坐标取值 [-RECT_GRID_BOUND, RECT_GRID_BOUND]
RECT_GRID_BOUND = 32
# 对角族（fin ∪ diag）的编码上界
DIAG_UNIVERSE_BOUND = 500
# Gold族 V* 建模为 [0, GOLD_UNIVERSE_BOUND]
GOLD_UNIVERSE_BOUND = 40

# 宿主自然数范围，配对编码超过这个值视为输入过大
MAX_NATURAL = 2 ** 63 - 1

# 对角族 HCEGIS 学习器每一步允许的单点探测次数
DIAG_PROBE_CAP = 20000

# 默认预算 = BUDGET_FACTOR * 全集上界
BUDGET_FACTOR = 10
# 稳定窗口 = 2 * min(目标成员数, STABILITY_WINDOW_CAP)
STABILITY_WINDOW_CAP = 50

# 输出目录（JSONL迭代日志、摘要、报告），可用环境变量覆盖
OUTPUT_DIR_ENV = "CEGIS_LAB_LOG_DIR"
DEFAULT_OUTPUT_DIR = "runs"
# 应用日志目录
APP_LOG_DIR = "logs"
APP_LOG_PREFIX = "cegis_lab"
APP_LOG_RETENTION_DAYS = 30

# theorem1 演示（MinCEGIS 与模拟等价）的矩阵
THEOREM1_CHAIN_TARGETS = list(range(0, 21))
THEOREM1_RECT_TARGETS = [(-1, 1, -1, 1)]
THEOREM1_RANDOM_RECTS = 10
THEOREM1_RANDOM_RECT_SPAN = 8
THEOREM1_RANDOM_RECT_SEED = 2024
THEOREM1_GOLD_TARGETS = ["full", 3, 17]
THEOREM1_SEEDS = [0, 1, 2]
THEOREM1_SCHEDULE = "padded-seeded"
THEOREM1_RECT_BUDGET = 4000

# lemma1 演示（链族分离）
LEMMA1_IMAX = 20

# lemma2 演示（对角族分离）
LEMMA2_DIAG_TARGETS = list(range(1, 11))
LEMMA2_FIN_INSTANCES = 10
LEMMA2_FIN_MAX_SIZE = 8
LEMMA2_FIN_SEED = 7
# (base_prefix里的 (j, n) 对, z1, z2)
LEMMA2_CRAFTED = [
    ([(0, 2)], 7, 9),
    ([(0, 1), (0, 4)], 3, 6),
    ([(0, 5), (0, 3), (0, 8)], 2, 11),
    ([(0, 0)], 12, 1),
    ([(0, 10), (0, 6)], 0, 15),
]
LEMMA2_BUDGET = 200
# 至少要有几组构造的目标对真正跑完（没被跳过）
LEMMA2_MIN_PAIRS = 5

# Gold 演示
GOLD_SAMPLE_INDICES = [0, 5, 17, 40]
