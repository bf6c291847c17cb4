from divprod.cli import entrypoint

entrypoint()
