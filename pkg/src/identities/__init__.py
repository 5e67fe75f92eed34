# Identities module
