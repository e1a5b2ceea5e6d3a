# keeps the tests directory on sys.path so `import oracles` works
