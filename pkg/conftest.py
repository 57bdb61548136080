from hypothesis import settings

settings.register_profile("hybridcipher", deadline=None, print_blob=True)
settings.load_profile("hybridcipher")
