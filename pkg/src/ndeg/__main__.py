from ndeg.cli import main

main()
