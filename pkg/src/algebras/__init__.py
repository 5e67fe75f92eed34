# Algebras module
