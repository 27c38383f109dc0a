from hypothesis import HealthCheck, settings

settings.register_profile(
    "kirchlab",
    deadline=None,
    max_examples=80,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kirchlab")
