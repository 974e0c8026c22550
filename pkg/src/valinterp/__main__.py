from valinterp.cli import main

main()
