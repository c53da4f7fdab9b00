from hypothesis import settings

# Exact-arithmetic properties over bounded integers; wall-clock deadlines
# only add flakiness on loaded CI machines.
settings.register_profile("eventorsion", deadline=None)
settings.load_profile("eventorsion")
