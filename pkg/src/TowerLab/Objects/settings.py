class Settings:
    WINDOW_LIMIT = 2 ** 31
    EXPONENT_LIMIT = 2 ** 24
    HEADROOM = 8
    ED_COLOR_SCAN = 32
    KAPPA_PROXY = 3
    SEQUENCE_COUNT = 8
    EXCEPTION_FRACTION = 0.1
    FAMILY_SIZE = 16
    DEFAULT_D_FAMILY = 'cantor'

    GENERATORS = 6
    DELTA = 20
    WIDTH = 4
