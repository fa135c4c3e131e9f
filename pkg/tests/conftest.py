from hypothesis import settings

settings.register_profile("artifact", deadline=None, max_examples=100)
settings.load_profile("artifact")
