from tmenum.cli import main

main()
