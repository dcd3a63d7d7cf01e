1 / 0
