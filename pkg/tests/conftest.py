from hypothesis import HealthCheck, settings

# exact rational arithmetic can be slow per example on loaded machines;
# the per-example deadline adds flakiness without adding coverage
settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")
