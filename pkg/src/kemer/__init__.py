# Kemer module
