from frobcore.cli import main

main()
