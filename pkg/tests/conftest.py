from hypothesis import settings

# Exact big-rational arithmetic has high per-example variance; wall-clock
# deadlines would make the property suites flaky on slow machines.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
