class Config:
    """Configuration class for the range closest-pair toolkit"""

    # Determinism
    DEFAULT_SEED = 0

    # Index construction
    ANCHOR_COUNT = 5  # c in the anchored-square structure
    CASCADING = True
    RMQ_METHOD = 'block'  # 'block' (linear space) or 'sparse'
    YAO_METHOD = 'kdtree'  # 'kdtree' or 'brute'
    KD_LEAF_SIZE = 8
    CLOSEST_PAIR_CUTOFF = 16  # below this, divide and conquer falls back to brute force

    # Space accounting: entries <= C * n * log2(n + 2)
    ENTRY_BOUND_CONSTANT = 160
    RMQ_SPACE_CONSTANT = 8  # block RMQ stores <= this many words per element
    ENTRY_DRIFT_LIMIT = 0.25  # bench fails when C grows by more than this across sizes

    # Output
    DISTANCE_DIGITS = 12
    LOG_LEVEL = 'INFO'

    # Fan-out for verify and bench
    WORKERS = 1

    # Experiments
    LOWER_BOUND_ARC = 1e-3
    SURVEY_TRIALS = 200

    @classmethod
    def validate_config(cls):
        """Validate configuration values"""
        problems = []
        if cls.ANCHOR_COUNT < 5:
            problems.append('ANCHOR_COUNT must be at least 5')
        if cls.RMQ_METHOD not in ('block', 'sparse'):
            problems.append(f"RMQ_METHOD must be 'block' or 'sparse', got {cls.RMQ_METHOD!r}")
        if cls.YAO_METHOD not in ('kdtree', 'brute'):
            problems.append(f"YAO_METHOD must be 'kdtree' or 'brute', got {cls.YAO_METHOD!r}")
        if cls.KD_LEAF_SIZE < 1:
            problems.append('KD_LEAF_SIZE must be positive')
        if cls.CLOSEST_PAIR_CUTOFF < 2:
            problems.append('CLOSEST_PAIR_CUTOFF must be at least 2')
        if cls.WORKERS < 1:
            problems.append('WORKERS must be positive')

        if problems:
            raise ValueError(f"Invalid configuration: {'; '.join(problems)}")

        return True


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = 'DEBUG'


class BenchmarkConfig(Config):
    """Benchmark configuration"""
    LOG_LEVEL = 'WARNING'
    WORKERS = 4


class TestingConfig(Config):
    """Testing configuration"""
    LOG_LEVEL = 'DEBUG'
    KD_LEAF_SIZE = 4
    SURVEY_TRIALS = 50


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'benchmark': BenchmarkConfig,
    'testing': TestingConfig,
    'default': Config
}
