if __name__ == "__main__":
    from polycell.main import main

    main()
