from hypothesis import settings

# exact arithmetic makes single examples slow on a loaded machine; no deadlines
settings.register_profile("intdiff", deadline=None)
settings.load_profile("intdiff")
